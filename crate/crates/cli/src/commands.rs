use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use hypercolor::conflict::{
    chi_single_conflict, estimate_p, exact_p, random_local_partition, solve_conflict, ChiResult,
};
use hypercolor::hypergraph::{
    gen_complete_r_partite, gen_complete_uniform, gen_disjoint_cliques, gen_random_linear,
    gen_sequential_degenerate, load,
};
use hypercolor::lab::{
    node_budget, run_experiment, write_csv, write_estimate_csv, EstimateRecord, ExperimentConfig,
    ExperimentKind, Family,
};
use hypercolor::palette::{
    drgas_sufficient, lll_resample_color, prune_bad_colors, random_list_assignment,
    solve_list_coloring,
};
use hypercolor::stats::{trial_rng, with_threads};
use hypercolor::{Error, ListAssignment, LocalKPartition, Result, SolveOutcome, SolveStatus};

use crate::args::{
    Command, Common, ConflictCommand, GenArgs, GenFamily, PaletteCommand, ScanCommand, ScanCommon,
    ThresholdFamily,
};
use crate::grid::{parse_floats, parse_grid};

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen(args) => generate(args),
        Command::Conflict(cmd) => conflict(cmd),
        Command::Palette(cmd) => palette(cmd),
        Command::Scan(cmd) => scan(cmd),
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn read_lists(path: &Path) -> Result<ListAssignment> {
    ListAssignment::parse(&fs::read_to_string(path)?)
}

fn missing(flag: &str) -> Error {
    Error::Config(format!("--{flag} is required for this family"))
}

fn generate(args: GenArgs) -> Result<()> {
    let n = || args.n.ok_or_else(|| missing("n"));
    let seed = args.common.seed;
    let h = match args.family {
        GenFamily::CompleteUniform => gen_complete_uniform(n()?, args.r)?,
        GenFamily::CompleteRPartite => {
            gen_complete_r_partite(args.r, args.part_size.ok_or_else(|| missing("part-size"))?)?
        }
        GenFamily::DisjointCliques => gen_disjoint_cliques(
            args.cliques.ok_or_else(|| missing("cliques"))?,
            args.k.ok_or_else(|| missing("k"))?,
            args.r,
        )?,
        GenFamily::RandomLinear => gen_random_linear(
            n()?,
            args.r,
            args.delta.ok_or_else(|| missing("delta"))?,
            seed,
        )?,
        GenFamily::SequentialDegenerate => {
            gen_sequential_degenerate(n()?, args.r, args.d.ok_or_else(|| missing("d"))?, seed)?
        }
    };
    let mut out = output(&args.common.out)?;
    write!(out, "{h}")?;
    out.flush()?;
    Ok(())
}

fn write_outcome(out: &mut dyn Write, outcome: &SolveOutcome) -> Result<()> {
    let status = match &outcome.status {
        SolveStatus::Sat(_) => "SAT",
        SolveStatus::Unsat => "UNSAT",
        SolveStatus::Timeout => "TIMEOUT",
    };
    writeln!(out, "status {status}")?;
    writeln!(out, "nodes {}", outcome.nodes_explored)?;
    if let Some(coloring) = outcome.coloring() {
        writeln!(out, "coloring {coloring}")?;
    }
    out.flush()?;
    Ok(())
}

fn conflict(cmd: ConflictCommand) -> Result<()> {
    match cmd {
        ConflictCommand::Solve {
            graph,
            partition,
            k,
            common,
        } => {
            let h = load(&graph)?;
            let c = match (partition, k) {
                (Some(path), _) => LocalKPartition::parse(&fs::read_to_string(path)?, &h)?,
                (None, Some(k)) => random_local_partition(&h, k, &mut trial_rng(common.seed, 0))?,
                (None, None) => return Err(Error::Config("need --partition or --k".into())),
            };
            let outcome = solve_conflict(&h, &c, node_budget(common.timeout_ms))?;
            write_outcome(&mut *output(&common.out)?, &outcome)
        }
        ConflictCommand::Estimate {
            graph,
            k,
            trials,
            family,
            common,
        } => {
            let h = load(&graph)?;
            let estimate = with_threads(common.threads, || {
                estimate_p(&h, k, trials, common.seed, node_budget(common.timeout_ms))
            })?;
            let record = EstimateRecord {
                family,
                n: h.num_vertices(),
                r: h.uniformity(),
                k,
                seed: common.seed,
                estimate,
            };
            write_estimate_csv(&[record], output(&common.out)?)
        }
        ConflictCommand::Chi {
            graph,
            k_max,
            common,
        } => {
            let h = load(&graph)?;
            let mut out = output(&common.out)?;
            match chi_single_conflict(&h, k_max)? {
                ChiResult::Exact(k) => writeln!(out, "chi {k}")?,
                ChiResult::ExceedsMax => writeln!(out, "chi >{k_max}")?,
            }
            out.flush()?;
            Ok(())
        }
        ConflictCommand::ExactP { graph, k, common } => {
            let h = load(&graph)?;
            let p = exact_p(&h, k)?;
            let mut out = output(&common.out)?;
            let value = *p.numer() as f64 / *p.denom() as f64;
            writeln!(out, "p {p} {value}")?;
            out.flush()?;
            Ok(())
        }
    }
}

fn palette(cmd: PaletteCommand) -> Result<()> {
    match cmd {
        PaletteCommand::Assign {
            graph,
            k,
            sigma,
            common,
        } => {
            let h = load(&graph)?;
            let lists = random_list_assignment(&h, k, sigma, &mut trial_rng(common.seed, 0))?;
            let mut out = output(&common.out)?;
            write!(out, "{lists}")?;
            out.flush()?;
            Ok(())
        }
        PaletteCommand::Prune {
            graph,
            lists,
            epsilon,
            pruned_out,
            common,
        } => {
            let h = load(&graph)?;
            let lists = read_lists(&lists)?;
            let (pruned, report) = prune_bad_colors(&h, &lists, epsilon)?;
            if let Some(path) = pruned_out {
                fs::write(path, pruned.to_string())?;
            }
            report.write_csv(output(&common.out)?)
        }
        PaletteCommand::Solve {
            graph,
            lists,
            common,
        } => {
            let h = load(&graph)?;
            let lists = read_lists(&lists)?;
            let outcome = solve_list_coloring(&h, &lists, node_budget(common.timeout_ms))?;
            write_outcome(&mut *output(&common.out)?, &outcome)
        }
        PaletteCommand::Lll {
            graph,
            lists,
            max_resamples,
            common,
        } => {
            let h = load(&graph)?;
            let lists = read_lists(&lists)?;
            if !drgas_sufficient(&h, &lists)? {
                eprintln!("warning: lists do not satisfy the local lemma condition");
            }
            let budget = max_resamples.unwrap_or(10 * h.num_edges() as u64);
            let outcome = lll_resample_color(&h, &lists, &mut trial_rng(common.seed, 0), budget)?;
            write_outcome(&mut *output(&common.out)?, &outcome)
        }
    }
}

fn base_config(
    kind: ExperimentKind,
    family: Family,
    scan: &ScanCommon,
) -> Result<ExperimentConfig> {
    let mut config = ExperimentConfig::new(kind, family);
    config.n_values = parse_grid::<u64>(&scan.n)?
        .into_iter()
        .map(|n| n as usize)
        .collect();
    config.r = scan.r;
    config.trials = scan.trials;
    config.seed = scan.common.seed;
    config.timeout_ms = scan.common.timeout_ms;
    config.record_elapsed = !scan.no_elapsed;
    Ok(config)
}

fn scan(cmd: ScanCommand) -> Result<()> {
    let (config, common): (ExperimentConfig, Common) = match cmd {
        ScanCommand::Threshold { family, k, scan } => {
            let family = match family {
                ThresholdFamily::CompleteGraph => Family::CompleteGraph,
                ThresholdFamily::CompleteUniform => Family::CompleteUniform,
            };
            let mut config = base_config(ExperimentKind::Threshold, family, &scan)?;
            config.k_values = parse_grid(&k)?;
            (config, scan.common)
        }
        ScanCommand::Degeneracy { d, k, c, scan } => {
            let mut config = base_config(
                ExperimentKind::Degeneracy,
                Family::SequentialDegenerate,
                &scan,
            )?;
            config.degeneracy = d;
            config.k_values = k
                .as_deref()
                .map(parse_grid)
                .transpose()?
                .unwrap_or_default();
            config.coefficients = c
                .as_deref()
                .map(parse_floats)
                .transpose()?
                .unwrap_or_default();
            (config, scan.common)
        }
        ScanCommand::Counterexample { k, sigma, c, scan } => {
            let mut config = base_config(
                ExperimentKind::Counterexample,
                Family::DisjointCliques,
                &scan,
            )?;
            config.k_values = vec![k];
            config.sigma = sigma;
            config.c_const = c.unwrap_or(0.0);
            (config, scan.common)
        }
        ScanCommand::Sparsify {
            delta,
            c,
            k,
            a,
            epsilon,
            no_prune,
            scan,
        } => {
            let mut config = base_config(ExperimentKind::Sparsify, Family::RandomLinear, &scan)?;
            config.max_degree = delta;
            config.c_const = c;
            config.k_values = k
                .as_deref()
                .map(parse_grid)
                .transpose()?
                .unwrap_or_default();
            config.a_const = a;
            config.epsilon = epsilon;
            config.prune = !no_prune;
            (config, scan.common)
        }
    };
    config.validate()?;
    let rows = with_threads(common.threads, || run_experiment(&config))?;
    write_csv(&rows, output(&common.out)?)
}
