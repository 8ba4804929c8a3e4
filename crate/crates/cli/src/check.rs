use anyhow::{bail, Result};
use kexchange_core::graph::{certify_separability, min_separability, BipartiteGraph};
use kexchange_core::permissive::check_structural_witness;
use kexchange_core::{Graph, VertexSet};

use crate::report::Report;
use crate::{files, BetaArg, CheckCommand};

pub fn uncovered_edge(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| !s.contains(u) && !s.contains(v))
}

pub fn run(cmd: CheckCommand) -> Result<bool> {
    let (mut report, failure) = match cmd {
        CheckCommand::Separability { graph, beta } => separability(&files::graph(&graph)?.graph, beta),
        CheckCommand::Cover { graph, set } => {
            let g = files::graph(&graph)?.graph;
            let s = files::set(&set, &g)?;
            let mut report = Report::new("check cover");
            report.push("set_size", s.len());
            let failure = uncovered_edge(&g, &s).map(|(u, v)| format!("edge {}-{} is uncovered", u + 1, v + 1));
            (report, failure)
        }
        CheckCommand::HallWitness { graph, side_a, set, k } => {
            let g = files::graph(&graph)?.graph;
            let a = files::set(&side_a, &g)?;
            let w = files::set(&set, &g)?;
            hall_witness(g, a, &w, k)?
        }
        CheckCommand::StructuralWitness { graph, cover, set, k } => {
            let g = files::graph(&graph)?.graph;
            let s = files::set(&cover, &g)?;
            if let Some((u, v)) = uncovered_edge(&g, &s) {
                bail!(
                    "{} is not a vertex cover: edge {}-{} is uncovered",
                    cover.display(),
                    u + 1,
                    v + 1
                );
            }
            let star = files::set(&set, &g)?;
            structural_witness(&g, &s, k, &star)
        }
    };
    report.push("result", if failure.is_none() { "pass" } else { "fail" });
    if let Some(reason) = &failure {
        report.push("reason", reason);
    }
    print!("{report}");
    Ok(failure.is_none())
}

fn separability(g: &Graph, beta: BetaArg) -> (Report, Option<String>) {
    let mut report = Report::new("check separability");
    let beta = match beta {
        BetaArg::Fixed(b) => b,
        BetaArg::Auto => min_separability(g, g.max_degree()).map_or(0, |c| c.beta()),
    };
    report.push("beta", beta);
    match certify_separability(g, beta) {
        Ok(cert) => {
            report.push("v1_size", cert.v1().len()).push("v2_size", cert.v2().len());
            (report, None)
        }
        Err(e) => (
            report,
            Some(format!(
                "vertex {} has degree > {beta} and {} neighbors of degree > {beta}",
                e.vertex + 1,
                e.inside
            )),
        ),
    }
}

fn hall_witness(g: Graph, a: VertexSet, w: &VertexSet, k: Option<usize>) -> Result<(Report, Option<String>)> {
    let b = g.vertices().difference(&a);
    let bg = BipartiteGraph::new(a, b, g)?;
    let nw = bg.graph().open_neighborhood(w);
    let mut report = Report::new("check hall-witness");
    report.push("w_size", w.len()).push("neighborhood_size", nw.len());
    let failure = if w.is_empty() {
        Some("W is empty".to_string())
    } else if !w.is_subset(bg.a()) {
        Some("W is not contained in side A".to_string())
    } else if nw.len() >= w.len() {
        Some(format!("|N(W)| = {} is not less than |W| = {}", nw.len(), w.len()))
    } else {
        k.filter(|&k| w.len() > k)
            .map(|k| format!("|W| = {} exceeds k = {k}", w.len()))
    };
    Ok((report, failure))
}

fn structural_witness(g: &Graph, s: &VertexSet, k: usize, star: &VertexSet) -> (Report, Option<String>) {
    let outside = g.open_neighborhood(star).difference(s).len();
    let mut report = Report::new("check structural-witness");
    report
        .push("witness_size", star.len())
        .push("outside_neighbors", outside)
        .push("k", k);
    let failure = if !star.is_subset(s) {
        Some("S* is not contained in the cover".to_string())
    } else if !g.is_independent(star) {
        Some("S* is not independent".to_string())
    } else if outside >= star.len() {
        Some(format!(
            "|N(S*) \\ S| = {outside} is not less than |S*| = {}",
            star.len()
        ))
    } else if outside + star.len() > k {
        Some(format!(
            "|N(S*) \\ S| + |S*| = {} exceeds k = {k}",
            outside + star.len()
        ))
    } else {
        None
    };
    debug_assert_eq!(failure.is_none(), check_structural_witness(g, s, k, star));
    (report, failure)
}
