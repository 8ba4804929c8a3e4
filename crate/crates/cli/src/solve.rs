use std::time::Instant;

use anyhow::{anyhow, bail, ensure, Context, Result};
use kexchange_core::coloring::{repetitions_for_delta, universal_feasible, FamilyMode};
use kexchange_core::graph::{certify_separability, min_separability};
use kexchange_core::permissive::{structural_q, Confidence, PermissiveOutcome};
use kexchange_core::{io, permissive_search, strict_search, CoverInstance, SearchMode, StrictOutcome, VertexSet};

use crate::report::Report;
use crate::{check, files, BetaArg, Engine, ModeArg, SolveArgs};

/// Largest q for which `auto` picks the deterministic family.
const AUTO_UNIVERSAL_MAX_Q: usize = 16;

pub fn run(args: SolveArgs) -> Result<bool> {
    match args.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("building thread pool")?
            .install(|| solve(&args)),
        None => solve(&args),
    }
}

fn solve(args: &SolveArgs) -> Result<bool> {
    if let Some(delta) = args.delta {
        ensure!(
            delta > 0.0 && delta < 1.0,
            "--delta must lie strictly between 0 and 1, got {delta}"
        );
    }
    let g = files::graph(&args.graph)?.graph;
    let cover = files::set(&args.cover, &g)?;
    if let Some((u, v)) = check::uncovered_edge(&g, &cover) {
        bail!(
            "{} is not a vertex cover: edge {}-{} is uncovered",
            args.cover.display(),
            u + 1,
            v + 1
        );
    }
    let mut inst = CoverInstance::new(g, cover, args.k)?;
    let mut report = Report::new("solve");
    report
        .push("engine", format!("{:?}", args.engine).to_lowercase())
        .push("n", inst.graph().n())
        .push("m", inst.graph().m())
        .push("cover_size", inst.cover().len())
        .push("k", args.k);

    let beta = match args.engine {
        Engine::Strict => None,
        Engine::Permissive => Some(resolve_beta(&inst, args.beta)?),
    };
    if let Some(beta) = beta {
        report.push("beta", beta).push("q", structural_q(args.k, beta));
    }

    let start = Instant::now();
    let mut steps = 0usize;
    let last = loop {
        let step = match beta {
            None => strict_step(&inst),
            Some(beta) => permissive_step(&inst, beta, args, steps as u64)?,
        };
        let Some(c) = &step.cover else {
            break step;
        };
        inst = inst.with_cover(c.clone())?;
        steps += 1;
        if !args.iterate {
            break step;
        }
        report.push("step", format!("{steps} {}", c.len()));
    };
    let improved = steps > 0;

    for (key, value) in last.details {
        report.push(key, value);
    }
    report
        .push(
            "outcome",
            if improved {
                "improved"
            } else {
                "no-improvement-within-k"
            },
        )
        .push("steps", steps)
        .push("final_cover_size", inst.cover().len())
        .push("time_ms", start.elapsed().as_millis())
        .push_set("cover", inst.cover());
    if let Some(path) = &args.output {
        files::write(path, &io::write_vertex_set(inst.cover()))?;
    }
    print!("{report}");
    Ok(improved)
}

struct Step {
    cover: Option<VertexSet>,
    details: Vec<(&'static str, String)>,
}

fn strict_step(inst: &CoverInstance) -> Step {
    match strict_search(inst) {
        StrictOutcome::ImprovedCover(c) => Step {
            cover: Some(c),
            details: Vec::new(),
        },
        StrictOutcome::NoImprovementWithinK => Step {
            cover: None,
            details: vec![("confidence", "exact".into())],
        },
    }
}

fn resolve_beta(inst: &CoverInstance, beta: BetaArg) -> Result<usize> {
    let g = inst.graph();
    match beta {
        BetaArg::Fixed(b) => {
            certify_separability(g, b).map_err(|e| {
                anyhow!(
                    "graph is not {b}-separable: vertex {} has degree > {b} and {} neighbors of degree > {b}",
                    e.vertex + 1,
                    e.inside
                )
            })?;
            Ok(b)
        }
        BetaArg::Auto => Ok(min_separability(g, g.max_degree())
            .expect("every graph is separable at its maximum degree")
            .beta()),
    }
}

fn permissive_step(inst: &CoverInstance, beta: usize, args: &SolveArgs, step: u64) -> Result<Step> {
    let q = structural_q(inst.k(), beta);
    let t = q.min(inst.cover().len());
    let universal = match args.mode {
        ModeArg::Universal => true,
        ModeArg::Randomized => false,
        ModeArg::Auto => q <= AUTO_UNIVERSAL_MAX_Q && universal_feasible(inst.cover().len(), t),
    };
    let mode = if universal {
        SearchMode::Universal
    } else {
        let repetitions = args.delta.map(|d| repetitions_for_delta(t, d)).transpose()?;
        // successive steps of --iterate use consecutive seeds
        SearchMode::Randomized {
            seed: args.seed.wrapping_add(step),
            repetitions,
        }
    };
    let out = permissive_search(inst, beta, mode)?;

    let p = out.params();
    let mut details = vec![("t", p.t.to_string())];
    match p.mode {
        FamilyMode::Universal => details.push(("mode", "universal".into())),
        FamilyMode::Randomized { seed, repetitions } => {
            details.push(("mode", "randomized".into()));
            details.push(("seed", seed.to_string()));
            details.push(("repetitions", repetitions.to_string()));
        }
    }
    details.push(("family_size", p.family_size.to_string()));
    details.push(("candidates", p.candidates.to_string()));
    Ok(match out {
        PermissiveOutcome::ImprovedCover { cover, witness } => {
            details.push(("witness_q", one_based(&witness.q_set)));
            details.push(("witness_w", one_based(&witness.w)));
            Step {
                cover: Some(cover),
                details,
            }
        }
        PermissiveOutcome::NoImprovementWithinK { confidence, .. } => {
            match confidence {
                Confidence::Deterministic => details.push(("confidence", "deterministic".into())),
                Confidence::Probabilistic { failure_bound } => {
                    details.push(("confidence", "probabilistic".into()));
                    details.push(("failure_bound", format!("{failure_bound:.6}")));
                }
            }
            Step { cover: None, details }
        }
    })
}

fn one_based(s: &VertexSet) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}
