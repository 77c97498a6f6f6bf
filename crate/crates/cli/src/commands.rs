use std::time::Instant;

use arp_core::classify::is_reverse_order_against_last;
use arp_core::complexity::factorial;
use arp_core::generator::{random_cro, random_general, random_subset, table4_family, GeneratorParams, PRNG};
use arp_core::{
    brute_force, classify, estimate_m, greedy_sequential, heuristic_m, q_star, sequential_search, BigCount,
    ComplexityReport, Instance, SearchMode, SearchOptions,
};

use crate::args::*;
use crate::error::{CliError, Result};
use crate::files::{read_instance, write_output, InstanceFile, Provenance};
use crate::report::{millis, Big, BoundsReport, BoundsRow, ClassifyReport, CountReport, Render, SolutionReport, Timings};

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve(a),
        Command::Count(a) => count(a),
        Command::Estimate(a) => estimate(a),
        Command::Report(a) => report(a),
        Command::Classify(a) => classify_cmd(a),
    }
}

fn emit(report: &impl Render, out: &Output) -> Result<()> {
    let text = match out.format.unwrap_or(Format::Json) {
        Format::Json => report.to_json(),
        Format::Csv => report.table().to_csv(),
        Format::Text => report.table().to_text(),
    };
    write_output(out.output.as_deref(), &text)
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| CliError::Usage(format!("`generate {kind}` requires {flag}")))
}

fn generate(a: GenerateArgs) -> Result<()> {
    let kind = format!("{:?}", a.kind).to_lowercase();
    let mut gen = Provenance::new();
    gen.insert("kind".into(), kind.clone());
    let inst = match a.kind {
        GenerateKind::Table4 => {
            let n = a.n.unwrap_or(1000);
            gen.insert("n".into(), n.to_string());
            table4_family(n)?
        }
        GenerateKind::Cro | GenerateKind::General => {
            let n = need(a.n, "--n", &kind)?;
            let seed = need(a.seed, "--seed", &kind)?;
            gen.insert("n".into(), n.to_string());
            gen.insert("seed".into(), seed.to_string());
            gen.insert("prng".into(), PRNG.into());
            if a.kind == GenerateKind::Cro {
                random_cro(&GeneratorParams::new(n, seed))?
            } else {
                random_general(n, seed)?
            }
        }
        GenerateKind::Subset => {
            let input = need(a.input, "--input", &kind)?;
            let k = need(a.k, "--k", &kind)?;
            let seed = need(a.seed, "--seed", &kind)?;
            let (source, _) = read_instance(&input)?;
            gen.insert("k".into(), k.to_string());
            gen.insert("seed".into(), seed.to_string());
            gen.insert("prng".into(), PRNG.into());
            gen.insert("source".into(), input.display().to_string());
            random_subset(&source, k, seed)?
        }
    };
    let file = InstanceFile::from_instance(&inst, gen);
    let csv_path = a.out.output.as_deref().is_some_and(|p| p.extension().is_some_and(|e| e == "csv"));
    let text = match a.out.format {
        Some(Format::Csv) => file.to_csv(),
        Some(Format::Json) => file.to_json(),
        Some(Format::Text) => return Err(CliError::Usage("instances are written as json or csv".into())),
        None if csv_path => file.to_csv(),
        None => file.to_json(),
    };
    write_output(a.out.output.as_deref(), &text)?;
    eprintln!("{} airplanes, {}", inst.len(), summary(&inst));
    Ok(())
}

fn summary(inst: &Instance) -> String {
    let class = classify(inst);
    if is_reverse_order_against_last(inst) {
        format!("{class}, reverse ordered against the farthest flyer")
    } else {
        class.to_string()
    }
}

fn solve(a: SolveArgs) -> Result<()> {
    let (inst, _) = read_instance(&a.input)?;
    let mut opts = SearchOptions {
        worker_hint: a.workers.max(1),
        ..SearchOptions::default()
    };
    if a.force {
        opts.max_n_guard = usize::MAX;
    }
    let start = Instant::now();
    let sol = match a.method {
        SolveMethod::Brute => brute_force(&inst, &opts)?,
        SolveMethod::Greedy => greedy_sequential(&inst),
        SolveMethod::Sequential => sequential_search(&inst, &opts),
    };
    let elapsed = start.elapsed();
    let q = sol.q_count.as_ref().map(ToString::to_string);
    let mut report = SolutionReport::new(sol.method, sol.best(), q, sol.visited_nodes);
    report.timings_ms.insert("solve", millis(elapsed));
    emit(&report, &a.out)
}

fn count(a: CountArgs) -> Result<()> {
    let (inst, _) = read_instance(&a.input)?;
    let opts = SearchOptions {
        worker_hint: a.workers.max(1),
        ..SearchOptions::with_mode(SearchMode::CountOnly)
    };
    let start = Instant::now();
    let sol = sequential_search(&inst, &opts);
    let mut timings = Timings::new();
    timings.insert("count", millis(start.elapsed()));
    let report = CountReport {
        n: inst.len(),
        q_count: sol.q_count.expect("counting search").to_string(),
        visited_nodes: sol.visited_nodes,
        timings_ms: timings,
    };
    emit(&report, &a.out)
}

fn estimate_row(inst: &Instance, mode: EstimateMode) -> Result<BoundsRow> {
    let start = Instant::now();
    let r = match mode {
        EstimateMode::Exact => estimate_m(inst)?,
        EstimateMode::Heuristic => heuristic_m(inst)?,
    };
    let mut row = BoundsRow::from_report(&r);
    row.timing_ms = Some(millis(start.elapsed()));
    Ok(row)
}

fn estimate(a: EstimateArgs) -> Result<()> {
    let start = Instant::now();
    let (inst, _) = read_instance(&a.input)?;
    let read = start.elapsed();
    let row = estimate_row(&inst, a.mode)?;
    let mut timings = Timings::new();
    timings.insert("read", millis(read));
    timings.insert("estimate", row.timing_ms.unwrap_or_default());
    let kind = match a.mode {
        EstimateMode::Exact => "estimate-exact",
        EstimateMode::Heuristic => "estimate-heuristic",
    };
    let report = BoundsReport {
        kind: kind.into(),
        rows: vec![row],
        timings_ms: timings,
    };
    emit(&report, &a.out)
}

/// `2m, 2m+1, 3m, 3m+1, 4m, 4m+1, 5m, 5m+1, 10m, 10m+1, 15m, 15m+1, n-1, n`,
/// keeping those inside `(2m-1, n]`.
fn table5_sizes(n: usize, m: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = [2, 3, 4, 5, 10, 15]
        .iter()
        .flat_map(|k| [k * m, k * m + 1])
        .chain([n - 1, n])
        .filter(|&s| s <= n && s >= 2)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

fn table6_sizes(n: usize, m: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = [2, 3, 4, 5, 10, 15]
        .iter()
        .map(|k| k * m)
        .chain([n])
        .filter(|&s| s <= n && s >= 2)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

fn family_m(n: usize) -> Result<usize> {
    Ok(estimate_m(&table4_family(n)?)?.m.expect("exact estimate sets m"))
}

pub fn bounds_report(kind: ReportKind, n: usize) -> Result<BoundsReport> {
    let start = Instant::now();
    let mut timings = Timings::new();
    let rows = match kind {
        ReportKind::Table2 => [4usize, 6, 8, 10]
            .iter()
            .map(|&n| {
                Ok(BoundsRow {
                    n,
                    f_n: Some(Big::count(&BigCount::new(factorial(n as u64)))),
                    q_star: Some(Big::count(&q_star(n)?)),
                    ..BoundsRow::default()
                })
            })
            .collect::<Result<Vec<_>>>()?,
        ReportKind::Table5 => {
            let m = family_m(n)?;
            timings.insert("estimate", millis(start.elapsed()));
            table5_sizes(n, m)
                .into_iter()
                .map(|size| {
                    let mut r = ComplexityReport::at(size, m)?;
                    r.m = Some(m);
                    Ok(BoundsRow::from_report(&r))
                })
                .collect::<Result<Vec<_>>>()?
        }
        ReportKind::Table6 => {
            let m = family_m(n)?;
            timings.insert("estimate", millis(start.elapsed()));
            table6_sizes(n, m)
                .into_iter()
                .map(|size| estimate_row(&table4_family(size)?, EstimateMode::Heuristic))
                .collect::<Result<Vec<_>>>()?
        }
    };
    timings.insert("total", millis(start.elapsed()));
    let name = format!("{kind:?}").to_lowercase();
    Ok(BoundsReport {
        kind: name,
        rows,
        timings_ms: timings,
    })
}

fn report(a: ReportArgs) -> Result<()> {
    if a.n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {}", a.n)));
    }
    emit(&bounds_report(a.kind, a.n)?, &a.out)
}

fn classify_cmd(a: ClassifyArgs) -> Result<()> {
    let (inst, _) = read_instance(&a.input)?;
    let class = classify(&inst);
    let report = ClassifyReport {
        n: inst.len(),
        class: class.kind.to_string(),
        ties: class.ties,
        reverse_order_against_last: is_reverse_order_against_last(&inst),
    };
    emit(&report, &a.out)
}
