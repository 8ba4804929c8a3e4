use anyhow::{ensure, Result};
use kexchange_core::generate::{gnp, matching_cover, random_bipartite, random_two_subdivided};
use kexchange_core::io::{write_dimacs, write_vertex_set};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::Report;
use crate::{files, GenCommand, GenCommon};

pub fn run(cmd: GenCommand) -> Result<bool> {
    let (name, graph, (ext, set), common) = match cmd {
        GenCommand::Random { n, p, common } => {
            ensure!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            let g = gnp(n, p, &mut rng);
            let cover = matching_cover(&g, &mut rng);
            ("gen random", g, ("cover", cover), common)
        }
        GenCommand::Bipartite { na, nb, p, common } => {
            ensure!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            let bg = random_bipartite(na, nb, p, &mut rng);
            let a = bg.a().clone();
            ("gen bipartite", bg.into_graph(), ("side-a", a), common)
        }
        GenCommand::Subdivided { base_n, base_m, common } => {
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            let g = random_two_subdivided(base_n, base_m, &mut rng);
            let cover = matching_cover(&g, &mut rng);
            ("gen subdivided", g, ("cover", cover), common)
        }
    };
    let GenCommon { seed, out } = common;
    let params = vec![("seed".to_string(), seed.to_string())];
    let graph_path = files::with_ext(&out, "dimacs");
    let set_path = files::with_ext(&out, ext);
    files::write(&graph_path, &write_dimacs(&graph, &params))?;
    files::write(&set_path, &write_vertex_set(&set))?;
    let mut report = Report::new(name);
    report
        .push("seed", seed)
        .push("n", graph.n())
        .push("m", graph.m())
        .push("set_size", set.len())
        .push("graph_file", graph_path.display())
        .push("set_file", set_path.display());
    print!("{report}");
    Ok(true)
}
