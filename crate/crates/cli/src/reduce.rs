use anyhow::{Context, Result};
use kexchange_core::graph::{min_separability, BipartiteGraph};
use kexchange_core::io::{write_dimacs, write_vertex_set};
use kexchange_core::permissive::structural_q;
use kexchange_core::reductions::{
    clique_to_hallset, clique_to_hallset_2subdivided, hallset_to_lsvc, vc_subdivision_shift, CliqueInstance,
};
use kexchange_core::{Graph, HallInstance, VertexSet};

use crate::report::Report;
use crate::{files, CliqueArgs, HallArgs, ReduceCommand, SubdivideArgs};

type Params = Vec<(String, String)>;

fn param(params: &mut Params, key: &str, value: impl ToString) {
    params.push((key.to_string(), value.to_string()));
}

pub fn run(cmd: ReduceCommand) -> Result<bool> {
    match cmd {
        ReduceCommand::CliqueToHallset(args) => clique(args, false),
        ReduceCommand::CliqueToHallset2sub(args) => clique(args, true),
        ReduceCommand::HallsetToLsvc(args) => hall(args),
        ReduceCommand::Subdivide(args) => subdivide(args),
    }?;
    Ok(true)
}

fn clique(args: CliqueArgs, subdivided: bool) -> Result<()> {
    let g = files::graph(&args.graph)?.graph;
    let ci = CliqueInstance::new(g, args.k).context("invalid clique instance")?;
    let mut params = Params::new();
    param(&mut params, "k", args.k);
    let (name, instance) = if subdivided {
        let red = clique_to_hallset_2subdivided(&ci).context("reduction rejected the instance")?;
        param(&mut params, "k_prime", red.k_prime);
        param(&mut params, "t", red.t);
        // the output feeds hallset-to-lsvc, which yields a 2-separable
        // instance with radius 2k' - 1
        let radius = 2 * red.k_prime - 1;
        param(&mut params, "lsvc_k", radius);
        param(&mut params, "beta", 2);
        param(&mut params, "q", structural_q(radius, 2));
        ("reduce clique-to-hallset-2sub", red.instance)
    } else {
        let red = clique_to_hallset(&ci).context("reduction rejected the instance")?;
        param(&mut params, "k_prime", red.k_prime);
        param(&mut params, "t", red.t);
        ("reduce clique-to-hallset", red.instance)
    };
    let bg = instance.bipartite();
    param(&mut params, "side_a", bg.a().len());
    param(&mut params, "side_b", bg.b().len());
    emit(name, bg.graph(), params, &args.out, ("side-a", bg.a()))
}

fn hall(args: HallArgs) -> Result<()> {
    let g = files::graph(&args.graph)?.graph;
    let a = files::set(&args.side_a, &g)?;
    let b = g.vertices().difference(&a);
    let bg = BipartiteGraph::new(a, b, g).context("side A does not induce a bipartition")?;
    let hi = HallInstance::new(bg, args.k).context("invalid Hall-set instance")?;
    let inst = hallset_to_lsvc(&hi);
    let beta = min_separability(inst.graph(), inst.graph().max_degree()).map_or(0, |c| c.beta());
    let mut params = Params::new();
    param(&mut params, "k", args.k);
    param(&mut params, "k_prime", inst.k());
    param(&mut params, "beta", beta);
    param(&mut params, "q", structural_q(inst.k(), beta));
    param(&mut params, "cover_size", inst.cover().len());
    emit(
        "reduce hallset-to-lsvc",
        inst.graph(),
        params,
        &args.out,
        ("cover", inst.cover()),
    )
}

fn subdivide(args: SubdivideArgs) -> Result<()> {
    let g = files::graph(&args.graph)?.graph;
    let (sub, shift) = vc_subdivision_shift(&g);
    let mut params = Params::new();
    param(&mut params, "original_n", g.n());
    param(&mut params, "cover_shift", shift);
    let path = files::with_ext(&args.out, "dimacs");
    files::write(&path, &write_dimacs(&sub, &params))?;
    let mut report = Report::new("reduce subdivide");
    for (k, v) in &params {
        report.push(k, v);
    }
    report
        .push("n", sub.n())
        .push("m", sub.m())
        .push("graph_file", path.display());
    print!("{report}");
    Ok(())
}

fn emit(name: &str, g: &Graph, params: Params, out: &std::path::Path, sidecar: (&str, &VertexSet)) -> Result<()> {
    let graph_path = files::with_ext(out, "dimacs");
    let side_path = files::with_ext(out, sidecar.0);
    files::write(&graph_path, &write_dimacs(g, &params))?;
    files::write(&side_path, &write_vertex_set(sidecar.1))?;
    let mut report = Report::new(name);
    for (k, v) in &params {
        report.push(k, v);
    }
    report
        .push("n", g.n())
        .push("m", g.m())
        .push("graph_file", graph_path.display())
        .push("set_file", side_path.display());
    print!("{report}");
    Ok(())
}
